"""Build script: compiles the optional bitset kernel extension.

The extension is a pure accelerator. If Cython or a C compiler is
unavailable the build falls back to a pure-Python install and the
package selects the Python bitset backend at import time.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/turangame/_kernels.pyx"],
        language_level="3",
    )
except Exception:  # pragma: no cover - builder environments without Cython
    ext_modules = []

setup(ext_modules=ext_modules)
