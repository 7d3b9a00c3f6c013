"""
mexlab entry point.
Settings come from environment variables or .env (see .env.example).
"""

import sys

from cli import main


if __name__ == "__main__":
    sys.exit(main())
