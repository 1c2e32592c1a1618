"""
`python -m framelium.spectral` opens the framelium command-line interface.
"""

from framelium.cli import main

if __name__ == "__main__":
    main()
