#!/usr/bin/env python3
"""
Main entry point for polygrow
Runs the command line interface from a source checkout
"""

import os
import sys

sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from polygrow.cli import main

if __name__ == "__main__":
    sys.exit(main())
