import os

from setuptools import Extension, setup

# The compiled kernels are optional: the package falls back to the pure-Python
# implementations in por._kernels_py when the extension is absent.
ext_modules = []
if os.environ.get("POR_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "por._kernels",
                    sources=["src/por/_kernels.pyx"],
                    extra_compile_args=["-O2"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
