"""Build script for the optional compiled enumeration kernels.

The package is fully functional without the extension: ``hopdom._kernels``
falls back to the pure-Python implementation when the compiled module is
missing (or when HOPDOM_PURE_PYTHON=1 is set).
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install still works
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "hopdom._kernels._native",
                ["src/hopdom/_kernels/_native.pyx"],
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

setup(ext_modules=ext_modules)
