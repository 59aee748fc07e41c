"""Build script: compiles the optional Cython kernel extension.

Set DIVNET_NO_EXT=1 to skip the extension entirely; the package then runs on
the pure-Python kernel twins in divnet._kernels_py.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("DIVNET_NO_EXT") != "1":
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError:
        ext_modules = []
    else:
        ext_modules = cythonize(
            [
                Extension(
                    "divnet._kernels",
                    ["src/divnet/_kernels.pyx"],
                    include_dirs=[numpy.get_include()],
                    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
                "initializedcheck": False,
            },
        )

setup(ext_modules=ext_modules)
