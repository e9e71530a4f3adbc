import sys

from arbgrover.cli import main

sys.exit(main())
