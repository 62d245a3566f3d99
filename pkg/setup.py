"""Optional Cython build of the coset-enumeration kernel.

The package works without compilation; the compiled module is a drop-in
replacement picked up at import time (see mfdeg/_tc_core.py which is valid
both as plain Python and as Cython pure-mode source).
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/mfdeg/_tc_core.py"],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
        },
    )
except Exception:
    pass

setup(ext_modules=ext_modules)
