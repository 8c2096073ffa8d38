import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("BIERSPHERE_SKIP_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "biersphere.kernels._ckernels",
                    ["src/biersphere/kernels/_ckernels.pyx"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # No Cython: install the pure-Python fallback only.
        ext_modules = []

setup(ext_modules=ext_modules)
