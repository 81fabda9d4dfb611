import sys

from pototal.cli import main

sys.exit(main())
