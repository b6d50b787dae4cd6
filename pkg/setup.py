"""setup.py - This file is used to install the package and its dependencies."""

import sys
import logging
from setuptools import setup, find_packages
from pathlib import Path

# Configure logging
logging.basicConfig(level=logging.DEBUG)

# Define console script entry points.
console_scripts = [
    "vcwb=enriched_workbench.main:main",
]


def parse_requirements(filename):
    """Parse the requirements file, skipping comments and blank lines."""
    req_path = Path(__file__).parent / filename
    with open(req_path, 'r') as file:
        lines = file.read().splitlines()
    return [line for line in lines
            if line.strip() and not line.startswith('#')]


def run_setup():
    setup(
        name="enriched-workbench",
        version="0.1.0",
        packages=find_packages(where="src"),
        package_dir={"": "src"},
        license="MIT",
        description="Exact-arithmetic workbench for categories enriched in "
                    "graded vector spaces: tensorings, completions and "
                    "the center functor.",
        long_description=open('README.md').read(),
        long_description_content_type='text/markdown',
        classifiers=[
            "Programming Language :: Python :: 3",
            "License :: OSI Approved :: MIT License",
            "Operating System :: OS Independent",
        ],
        python_requires=">=3.9",
        include_package_data=True,
        data_files=[('', ['requirements.txt'])],
        install_requires=parse_requirements('requirements.txt'),
        entry_points={"console_scripts": console_scripts},
    )


if __name__ == "__main__":
    # Check if no commands were supplied
    if len(sys.argv) == 1:
        # Default to 'install' if no command is supplied
        sys.argv.append('install')
    run_setup()
