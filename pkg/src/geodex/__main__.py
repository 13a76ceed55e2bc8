import sys

from geodex.cli import main

sys.exit(main())
