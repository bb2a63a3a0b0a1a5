"""Builds the optional compiled kernel core.

The package is fully functional without the extension (a pure-numpy
fallback is selected at import time); the extension exists because the
convolution inner loops dominate runtime.

-ffp-contract=off is required: FMA contraction would change rounding and
break the bit-exactness contract between the compiled and fallback kernels.
"""

from setuptools import setup

try:
    import numpy
    from Cython.Build import cythonize
    from setuptools import Extension

    extensions = cythonize(
        [
            Extension(
                "hyperseg._kernels._fast",
                ["src/hyperseg/_kernels/_fast.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3", "-ffp-contract=off"],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
