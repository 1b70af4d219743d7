import sys

from iwcentrality.cli import main

sys.exit(main())
