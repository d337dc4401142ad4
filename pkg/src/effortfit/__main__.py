import sys

from effortfit.cli import main

sys.exit(main())
