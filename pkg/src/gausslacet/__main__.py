import sys

from gausslacet.cli import main

sys.exit(main())
