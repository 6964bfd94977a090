import sys

from latticesync.cli import main

sys.exit(main())
