import os

from setuptools import setup

# The compiled kernels are optional: the package falls back to the pure-Python
# twins in zsimilar._kernels_py when the extension is absent or fails to build.
ext_modules = []
if os.environ.get("ZSIMILAR_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/zsimilar/_kernels_cy.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except Exception:
        ext_modules = []

setup(ext_modules=ext_modules)
