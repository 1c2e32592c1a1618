"""
Entry point for `python -m framelium`: opens the command-line interface.
"""

from framelium.cli import main

if __name__ == "__main__":
    main()
