#!/usr/bin/env python3
"""
Module containing a parser for the arguments in the terminal execution

This module is meant to be used by the startup.py file. Every subcommand
shares the -c/--config, --format and -l options.
"""
# Standard libraries
import argparse


def str2bool(v):
    if isinstance(v, bool):
        return v
    if v.lower() in ('yes', 'true', 't', 'y', '1'):
        return True
    elif v.lower() in ('', 'no', 'false', 'f', 'n', '0'):
        return False
    else:
        raise argparse.ArgumentTypeError('Boolean value expected.')


def _common(parser):
    parser.add_argument("-c", "--config",
                        type=str,
                        default="config/default.json",
                        help="Location of the configuration file, relative "
                             "to the package folder unless it exists as given"
                       )
    parser.add_argument("--format",
                        choices=("text", "json"),
                        default="text",
                        help="Output format"
                       )
    parser.add_argument("-l",
                        type=str2bool,
                        default=False,
                        nargs='?',
                        const=True,
                        metavar="",
                        help="Write a debug log file under log/"
                       )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="heiscat",
        description="Exact computations in the Heisenberg category")
    subparsers = parser.add_subparsers(dest="command", required=True)

    cmd = subparsers.add_parser("normalize",
                                help="Normal form of a term in Heis_k")
    cmd.add_argument("term", help="Term text, or @file to read it from a file")
    cmd.add_argument("--charge", type=int, required=True,
                     help="Central charge k")
    cmd.add_argument("--max-dots", type=int, default=None,
                     help="Largest dot count allowed on a strand")
    cmd.add_argument("--delta", type=str, default=None,
                     help="Scalar value of the lowest central bubble")
    _common(cmd)

    cmd = subparsers.add_parser("eval", help="Matrix of a term under Psi_f")
    cmd.add_argument("term", help="Term text, or @file to read it from a file")
    cmd.add_argument("--f", type=str, required=True,
                     help="Monic polynomial in u")
    _common(cmd)

    cmd = subparsers.add_parser("check", help="Run a verification suite")
    cmd.add_argument("suite", help="Suite name")
    cmd.add_argument("--f", type=str, default=None,
                     help="Monic polynomial in u replacing the configured pool")
    cmd.add_argument("--nmax", type=int, default=None,
                     help="Largest number of strands in contexts")
    cmd.add_argument("--seed", type=int, default=None, help="Random seed")
    _common(cmd)

    cmd = subparsers.add_parser("series", help="Coefficients of delta(u)")
    cmd.add_argument("--f", type=str, required=True, help="Monic f(u)")
    cmd.add_argument("--fprime", type=str, required=True, help="Monic f'(u)")
    cmd.add_argument("--order", type=int, required=True,
                     help="Last power of u^-1 to compute")
    _common(cmd)

    cmd = subparsers.add_parser("basis",
                                help="Truncated basis of Hom(X, Y)")
    cmd.add_argument("source", help="Object word X, '.' for the unit")
    cmd.add_argument("target", help="Object word Y, '.' for the unit")
    cmd.add_argument("--max-dots", type=int, default=0,
                     help="Largest dot count per strand")
    _common(cmd)

    for name, text in (("omega", "Image of a term under the reflection"),
                       ("rotate", "Mate of a term, rotated by 180 degrees")):
        cmd = subparsers.add_parser(name, help=text)
        cmd.add_argument("term",
                         help="Term text, or @file to read it from a file")
        _common(cmd)
    return parser


def parse_args(argv=None):
    """
    Obtain the command options from the input arguments

    Return a tuple with the following elements:
    * config_file: Location of the configuration file
    * args: argparse namespace with the subcommand and its options
    """
    # Get the values from the argument list
    args = build_parser().parse_args(argv)
    config_file = args.config
    return (config_file, args)
