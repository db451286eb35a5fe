#!/usr/bin/env python3
"""
theoria - run session scripts, property suites and gallery checks

Examples:
    python scripts/theoria.py data/fan_basics.tl
    python scripts/theoria.py verify --suite distributivity --seeds 300
    python scripts/theoria.py gallery fan-pair
"""

import sys
import os
# Add the parent directory to the path so we can import from config and src
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.cli.main import main

if __name__ == "__main__":
    main()
