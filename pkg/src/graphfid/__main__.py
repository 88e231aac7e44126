import sys

from graphfid.cli import main

sys.exit(main())
