import sys

from fibwalk.cli import main

sys.exit(main())
