from setuptools import setup, find_packages

setup(
    name="hypermatch",
    version="0.1.0",
    description="Perfect matchings of weighted hypergraphs: exact partition functions, "
    "k-stochastic scaling and polynomial sandwich estimates",
    long_description=open("README.md").read(),
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests", "tests.*"]),
    install_requires=[
        "numpy>=1.23.0",
        "scipy>=1.9.0",
        "pandas>=1.5.0",
    ],
    extras_require={
        "dev": [
            "pytest>=7.0.0",
            "pytest-cov>=4.0.0",
        ],
    },
    entry_points={
        "console_scripts": [
            "hypermatch=hypermatch.cli:main",
        ],
    },
    python_requires=">=3.8",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Topic :: Software Development :: Libraries :: Python Modules",
    ],
    keywords=[
        "hypergraph",
        "perfect-matching",
        "permanent",
        "hafnian",
        "partition-function",
        "matrix-scaling",
        "combinatorics",
    ],
    include_package_data=True,
    zip_safe=False,
)
