import sys

from frobnil.cli import main

sys.exit(main())
