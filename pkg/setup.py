from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("ikdeg.kernels._ckernels", ["src/ikdeg/kernels/_ckernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # No Cython: install pure-Python only; the kernel dispatcher falls back.
    extensions = []

setup(ext_modules=extensions)
