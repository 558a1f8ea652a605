"""Build script. The compiled kernel is optional: if Cython (or a C
compiler) is unavailable the package installs anyway and falls back to the
pure-Python kernels at import time.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "fillcurve._kernels.fastpoly",
                ["src/fillcurve/_kernels/fastpoly.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
