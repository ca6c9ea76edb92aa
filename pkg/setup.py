"""Build script: compiles the optional Cython kernel.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time), so any build failure here is
non-fatal: set BSP_PURE_PYTHON=1 to skip the extension entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("BSP_PURE_PYTHON") != "1" and os.path.exists("src/bsp/_kernel.pyx"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "bsp._kernel",
                    ["src/bsp/_kernel.pyx"],
                    extra_compile_args=["-O2"],
                )
            ],
            language_level="3",
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
