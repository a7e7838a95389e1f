import sys

from timevalue.cli import main

sys.exit(main())
