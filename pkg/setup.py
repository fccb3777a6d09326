import os

from setuptools import setup

ext_modules = []
if not os.environ.get("CUBESET_NO_EXT"):
    try:
        import numpy
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "cubeset._kernels",
                    ["src/cubeset/_kernels.pyx"],
                    include_dirs=[numpy.get_include()],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # No Cython available: the package still works on the pure-Python
        # kernels selected at import time.
        ext_modules = []

setup(ext_modules=ext_modules)
