"""
`python -m framelium.kernels` opens the framelium command-line interface.
"""

from framelium.cli import main

if __name__ == "__main__":
    main()
