"""Build hook for the optional compiled kernel extension.

The package is fully functional without the extension; littlewood.kernels
falls back to the pure-Python implementations when the compiled module is
absent.  Cython is therefore a build-time convenience, not a requirement.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext = Extension(
        "littlewood.kernels._corrfast",
        ["src/littlewood/kernels/_corrfast.pyx"],
        extra_compile_args=["-O3"],
    )
    ext.optional = True
    ext_modules = cythonize([ext], compiler_directives={"language_level": "3"})

setup(ext_modules=ext_modules)
