# Makes the package importable from a plain checkout (pytest prepends this directory to sys.path).
