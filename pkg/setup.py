"""Build the optional compiled kernels.

The package works without the extension (the pure-Python kernels in
ctswap._pykernels are selected at import time); building with Cython just
makes the hot loops fast. `pip install -e . --no-build-isolation` compiles
the extension when Cython is available and silently skips it otherwise.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/ctswap/_ckernels.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
