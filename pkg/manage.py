#!/usr/bin/env python3
import os
import sys

if __name__ == "__main__":
    os.environ.setdefault("GSTRUCTURE_SETTINGS_MODULE", "gstructure.settings")
    try:
        import gstructure.apps
    except ImportError:
        raise ImportError(
            "Couldn't import gstructure. Are you sure it's installed "
            "and available on your PYTHONPATH environment variable? Did you "
            "forget to activate a virtual environment?")
    from gstructure.cli import run

    sys.exit(run(sys.argv[1:]))
