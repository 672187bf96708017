import sys

from laurentdio.cli import main

sys.exit(main())
