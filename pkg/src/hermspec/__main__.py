#!/usr/bin/env python3
"""
Entry point for running hermspec as a module.

This allows the package to be executed with:
    python -m hermspec
"""

from hermspec.cli.main import main

if __name__ == "__main__":
    main()
