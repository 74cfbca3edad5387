"""Entry point for `python -m dlens`"""

import sys

from .cli import main

sys.exit(main())
