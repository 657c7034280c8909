import os

from setuptools import Extension, setup

# The compiled kernel is optional: the package falls back to the pure-Python
# implementation in scatterkit._kernels.pure when the extension is absent.
ext_modules = []
if not os.environ.get("SCATTERKIT_NO_NATIVE"):
    pyx = os.path.join("src", "scatterkit", "_kernels", "_native.pyx")
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None and os.path.exists(pyx):
        ext_modules = cythonize(
            [
                Extension(
                    "scatterkit._kernels._native",
                    [pyx],
                    extra_compile_args=["-O3"],
                    optional=True,
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
