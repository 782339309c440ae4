from setuptools import Extension, setup

# The compiled kernel is optional: when Cython (or a C toolchain) is missing
# the package falls back to the NumPy kernels in qrsums._pykernel.
try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("qrsums._ckernel", ["src/qrsums/_ckernel.pyx"])],
        compiler_directives={"language_level": 3},
    )

setup(ext_modules=ext_modules)
