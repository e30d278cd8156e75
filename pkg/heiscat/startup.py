#!/usr/bin/env python3
"""
Module for loading the configuration and running the command line front end

Exit codes: 0 success, 1 failing verification case, 2 usage or parse
error, 3 resource cap exceeded.
"""
# Standard libraries
import json
import logging
import pathlib
import sys
import time
# Local libraries
import heiscat.coeffs
import heiscat.diagram
import heiscat.errors
import heiscat.functor
import heiscat.hecke
import heiscat.normalform.basis
import heiscat.normalform.engine
import heiscat.symfunc
import heiscat.utils.parse_args
import heiscat.verify


EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def load_config(conf_file):
    """
    Load the configuration file with the engine caps and suite parameters

    @param conf_file: str with the address of the config file; relative
    addresses that do not exist are resolved against the package folder
    """
    path = pathlib.Path(conf_file)
    if not path.is_absolute() and not path.exists():
        path = pathlib.Path(__file__).resolve().parent.joinpath(conf_file)
    with open(path) as f:
        config_data = json.load(f)
    config = config_data["config"]
    config.setdefault("engine", {})
    config.setdefault("suites", {})
    return config


def apply_caps(config):
    """
    Install the module level guardrails of the configuration
    """
    engine = config.get("engine", {})
    if "degree_cap" in engine:
        heiscat.symfunc.DEGREE_CAP = int(engine["degree_cap"])
    if "hecke_steps" in engine:
        heiscat.hecke.REDUCTION_STEPS = int(engine["hecke_steps"])


def conf_logger(logdir=None, console_level=logging.INFO):
    """
    Attach a console handler and, when logdir is given, a debug log file
    """
    logger = logging.getLogger('heiscat')
    logger.setLevel(logging.DEBUG)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)

    if logdir is not None:
        # Create log folder
        logpath = pathlib.Path(logdir)
        logpath.mkdir(parents=True, exist_ok=True)
        datetime = time.strftime("%Y-%m-%d %H:%M:%S")
        fdatetime = time.strftime("%Y%m%d-%H%M%S")
        # Create file handler
        file_handler = logging.FileHandler("{}/{}.log".format(logpath,
                                                              fdatetime))
        file_handler.setLevel(logging.DEBUG)
        formatter = logging.Formatter(
            '%(asctime)s - %(levelname)s - %(message)s', "%H:%M:%S")
        file_handler.setFormatter(formatter)
        file_handler.stream.write("{} MAIN PROGRAM EXECUTION\n".format(
            datetime))
        logger.addHandler(file_handler)

    # Create console handler
    stream_handler = logging.StreamHandler()
    stream_handler.setLevel(console_level)
    formatter = logging.Formatter('%(levelname)s: %(message)s')
    stream_handler.setFormatter(formatter)
    logger.addHandler(stream_handler)
    return logger


def default_logdir():
    return pathlib.Path(__file__).resolve().parent.parent.joinpath("log")


def read_term(text):
    """
    Parse a term given inline or as @file
    """
    if text.startswith("@"):
        with open(text[1:]) as f:
            text = f.read().strip()
    return heiscat.diagram.parse(text)


def _emit(args, text, payload):
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_normalize(args, config):
    term = read_term(args.term)
    params = heiscat.normalform.engine.CategoryParams.from_config(
        args.charge, config["engine"], max_dots=args.max_dots,
        delta=args.delta)
    result = heiscat.normalform.engine.normalize(term, params)
    payload = dict(result.to_json(), charge=params.k)
    _emit(args, result.render(), payload)
    return EXIT_OK


def cmd_eval(args, config):
    term = read_term(args.term)
    data = heiscat.hecke.CyclotomicData.parse(args.f)
    result = heiscat.functor.eval_term(term, data)
    payload = dict(result.to_json(), f=str(data))
    _emit(args, heiscat.functor.matrix_to_text(result.matrix), payload)
    return EXIT_OK


def cmd_check(args, config):
    suite_config = dict(config["engine"], **config["suites"])
    report = heiscat.verify.run_suite(args.suite, suite_config, f=args.f,
                                      nmax=args.nmax, seed=args.seed)
    _emit(args, report.render(), report.to_json())
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def cmd_series(args, config):
    f = heiscat.coeffs.Poly.parse(args.f)
    fprime = heiscat.coeffs.Poly.parse(args.fprime)
    series = heiscat.coeffs.delta_series(f, fprime, args.order)
    payload = {"f": str(f), "fprime": str(fprime), "order": args.order,
               "coefficients": [heiscat.coeffs.format_fraction(c)
                                for c in series.coefficients]}
    _emit(args, str(series), payload)
    return EXIT_OK


def cmd_basis(args, config):
    source = heiscat.diagram.parse_word(args.source)
    target = heiscat.diagram.parse_word(args.target)
    basis = heiscat.normalform.basis.enumerate_basis(source, target,
                                                     args.max_dots)
    text = "\n".join(d.render() for d in basis) if basis else "(empty)"
    payload = {"source": heiscat.diagram.render_word(source),
               "target": heiscat.diagram.render_word(target),
               "max_dots": args.max_dots,
               "basis": [d.to_json() for d in basis]}
    _emit(args, text, payload)
    return EXIT_OK


def cmd_omega(args, config):
    image, sign = heiscat.diagram.omega(read_term(args.term))
    _emit(args, "{} * ({})".format(sign, image.render()),
          {"term": image.render(), "sign": sign})
    return EXIT_OK


def cmd_rotate(args, config):
    image = heiscat.diagram.rotate180(read_term(args.term))
    _emit(args, image.render(), {"term": image.render()})
    return EXIT_OK


COMMANDS = {
    "normalize": cmd_normalize,
    "eval": cmd_eval,
    "check": cmd_check,
    "series": cmd_series,
    "basis": cmd_basis,
    "omega": cmd_omega,
    "rotate": cmd_rotate,
}


def startup(conf_file, args):
    """
    Configure the package and run one subcommand, returning its exit code
    """
    logger = logging.getLogger('heiscat')
    try:
        config = load_config(conf_file)
    except (OSError, ValueError, KeyError) as err:
        logger.error("Invalid configuration file {}: {}".format(conf_file,
                                                               err))
        return EXIT_USAGE
    apply_caps(config)
    msg = "Starting up heiscat:"
    msg += "\n- Configuration file: {}".format(conf_file)
    msg += "\n- Command: {}".format(args.command)
    logger.debug(msg)
    try:
        return COMMANDS[args.command](args, config)
    except heiscat.errors.ResourceCapError as err:
        logger.error(str(err))
        return EXIT_RESOURCE
    except heiscat.errors.TermTypeError as err:
        logger.error("Ill-typed term at slice {}: {}".format(err.index, err))
        return EXIT_USAGE
    except (heiscat.errors.HeisError, ValueError) as err:
        logger.error(str(err))
        return EXIT_USAGE


def main(argv=None):
    conf_file, args = heiscat.utils.parse_args.parse_args(argv)
    conf_logger(default_logdir() if args.l else None, logging.WARNING)
    return startup(conf_file, args)


if __name__ == "__main__":
    sys.exit(main())
