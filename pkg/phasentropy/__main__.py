import sys

from phasentropy.cli.main import main

sys.exit(main())
