import sys

from core.cli.hardy_tool import main

sys.exit(main())
