import setuptools

with open("README.md", "r") as fh:
    long_description = fh.read()

setuptools.setup(
    name="shellspec",
    version="1.0.0",
    author="The ShellSpec Authors",
    description="Spectral computations for two-dimensional Dirac operators "
                "with delta-shell interactions.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=["tests", "shellspec_examples"]),
    license='BSD 3-clause',
    python_requires='>=3.8',
    install_requires=[
        "numpy>=1.20",
        "scipy>=1.7"
    ],
    extras_require={
        "test": ["pytest>=6.0"]
    },
    entry_points={
        "console_scripts": [
            "shellspec = shellspec.cli:main"
        ]
    },
    classifiers=[
        "License :: OSI Approved :: BSD License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Physics"
    ],
)
