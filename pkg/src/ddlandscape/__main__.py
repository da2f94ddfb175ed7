import sys

from ddlandscape.cli import main

sys.exit(main())
