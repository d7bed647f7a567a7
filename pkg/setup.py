from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/rpkg/kernels/_speedups.pyx"], language_level="3"
    )
except ImportError:
    # Pure-Python kernels are used when the extension is unavailable.
    ext_modules = []

setup(ext_modules=ext_modules)
