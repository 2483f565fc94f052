"""Build the optional compiled core; the package works without it."""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("NEGABETA_PURE") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            Extension("negabeta._core", ["src/negabeta/_core.pyx"]),
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
