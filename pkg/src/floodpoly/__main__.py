import sys

from floodpoly.cli import main

sys.exit(main())
