"""Build script: compiles the optional Cython kernel extension.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time); set MACPROD_PURE=1 to skip the
build, or let it degrade silently when Cython or a C compiler is absent.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("MACPROD_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "macprod._kernels",
                    ["src/macprod/_kernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
