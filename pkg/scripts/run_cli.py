#!/usr/bin/env python3
"""
Run the quintary command line from a source checkout.
"""

import sys
from pathlib import Path

# Ensure project root is on sys.path so 'src.*' imports resolve
sys.path.insert(0, str(Path(__file__).parent.parent))

from dotenv import load_dotenv

from src.cli.main import cli


def main():
    """Load the project .env and hand over to the CLI."""
    project_root = Path(__file__).parent.parent
    load_dotenv(project_root / ".env")
    cli()


if __name__ == "__main__":
    main()
