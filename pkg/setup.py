from setuptools import setup

with open('README.md') as f:
    readme = f.read()

setup(
    author="Justin Grilli",
    author_email="justin.grilli@gmail.com",
    license='MIT',
    url='http://pypi.python.org/pypi/network-interventions/',
    description='Joint interventions on marginal utilities and links in network games',
    long_description=readme,
    long_description_content_type='text/markdown',
    name="network_interventions",
    version="0.1.0",
    requires_python=">=3.8",
    packages=[
        'network_interventions',
        'network_interventions.general',
        'network_interventions.netgame',
        'network_interventions.intervention',
        'network_interventions.analysis',
        'network_interventions.orientation',
        'network_interventions.scripts',
    ],
    package_data={'network_interventions': ['resources/*.json']},
    include_package_data=True,
    install_requires=['numpy>=1.22.0,<2.0.0',
                      'scipy>=1.8.0,<2.0.0',
                      'pyyaml>=6.0,<7.0.0',
                      'pandas>=1.4.1,<2.0.0',
                      'tabulate>=0.8.9,<1.0.0',
                      ],
    entry_points={
        'console_scripts': [
            'network_interventions = network_interventions.scripts.cli:main',
        ]
    }
)
