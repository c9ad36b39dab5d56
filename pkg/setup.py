"""Build hook for the optional compiled kernel extension.

The package works without the extension: when Cython or a C compiler is
unavailable the build is skipped and the pure-Python kernel backend is
selected at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    extensions = []
else:
    extensions = cythonize(
        [
            Extension(
                "marketentropy._kernels._core",
                ["src/marketentropy/_kernels/_core.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=extensions)
