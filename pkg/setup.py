import os

from setuptools import Extension, setup

# Set WBCC_NO_EXT=1 to install without the compiled kernel.
ext_modules = []
if not os.environ.get("WBCC_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "wbcc.enumeration._ckernel",
                    ["src/wbcc/enumeration/_ckernel.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
