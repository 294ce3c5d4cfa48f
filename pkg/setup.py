from setuptools import setup, find_packages

"""
This file should called to install the package.
"""

with open('requirements.txt') as f:
    required = f.read().splitlines()

# Call the setup process
setup(
    name = 'quorum',
    version = "0.1.0-alpha",
    install_requires=required,
    packages = find_packages(exclude=['tests', 'tests.*']),
    package_data = {
        '': ['README.md', 'LICENSE']},
    scripts=['bin/quorum'],
    description = 'Quorum simulates a programmable quantum gate array that evaluates expectation values, discrete Wigner functions and phase-space domain sums of qudit states.',
    classifiers=[
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'License :: OSI Approved :: MIT License',
        'Operating System :: OS Independent',
        'Development Status :: 3 - Alpha',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Physics'
    ],
    long_description = """Quorum compiles any operator on an N dimensional space into a program state for a fixed array of controlled gates, simulates the scattering circuits exactly or by seeded shot sampling, and evaluates expectation values, discrete Wigner functions, line sums and threshold decisions over phase-space domains."""
)
