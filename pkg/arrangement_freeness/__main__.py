"""python -m arrangement_freeness"""
import sys

from .cli import main

sys.exit(main())
