"""Build the optional Cython kernel core.

If Cython or a C compiler is unavailable the package still installs and runs
on the pure-Python kernels.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools.extension import Extension

    ext_modules = cythonize(
        [
            Extension(
                "ramsey_witness._kernels",
                ["src/ramsey_witness/_kernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
