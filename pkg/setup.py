"""Build script: compiles the optional branch-and-bound kernel extension.

The extension is marked optional; if no C compiler (or Cython) is available
the install still succeeds and the package falls back to the pure-Python
kernel at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "neighborly.search._kernel_c",
                ["src/neighborly/search/_kernel_c.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
