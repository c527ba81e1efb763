"""Allow running the package as a module: python -m mpweyl"""

from .main import main

if __name__ == "__main__":
    main()
