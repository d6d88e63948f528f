"""Build script: compiles the optional Cython BDD kernel.

The package works without the extension (pure-Python kernel fallback), so a
failed compilation only prints a warning instead of aborting the install.
"""

import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/basinscope/dd/_kernel_cy.pyx"],
        language_level="3",
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    print(f"warning: skipping compiled kernel ({exc}); "
          "falling back to the pure-Python kernel", file=sys.stderr)

setup(ext_modules=ext_modules)
