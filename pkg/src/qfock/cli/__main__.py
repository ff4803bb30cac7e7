"""Entry point for `python -m qfock.cli`."""
import sys

from . import main

sys.exit(main())
