"""Build script: compiles the optional scan kernel, falling back to pure Python.

The package is fully functional without the compiled extension; the kernel
selector in ``circiso._speed`` picks whichever is importable.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("circiso._scan", ["src/circiso/_scan.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
