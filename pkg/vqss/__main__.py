"""Run the vqss command line with python -m vqss."""
import sys

from .cli import main


sys.exit(main())
