import configparser
import logging
import os

from plateau.codes import DEFAULT_BUDGET


DEFAULT_PATH = 'plateaurc'


class Config:
    def __init__(self, config):
        self.compute = ConfigCompute(_section(config, 'compute'))
        self.output = ConfigOutput(_section(config, 'output'))
        self.logging = ConfigLogging(_section(config, 'logging'))


class ConfigCompute:
    def __init__(self, config_compute):
        self.budget = _config_positive(config_compute, 'budget',
                                       DEFAULT_BUDGET)
        self.threads = _config_positive(config_compute, 'threads', 1)


class ConfigOutput:
    def __init__(self, config_output):
        self.format = config_output.get('format', 'json')
        if self.format not in ('json', 'text'):
            raise ValueError('output.format must be json or text')
        self.list_sets = _config_boolean(config_output.get('list_sets',
                                                           'no'))


class ConfigLogging:
    def __init__(self, config_logging):
        level = config_logging.get('level', 'WARNING').upper()
        if level not in ('DEBUG', 'INFO', 'WARNING', 'ERROR'):
            raise ValueError('invalid logging.level %r' % level)
        self.level = getattr(logging, level)
        self.file = config_logging.get('file')


def parse_config(f):
    config = configparser.ConfigParser()
    config.read_file(f)
    return Config(config)


def load_config(path=None, environ=os.environ):
    if path is None and os.path.exists(DEFAULT_PATH):
        path = DEFAULT_PATH
    if path is None:
        config = Config(configparser.ConfigParser())
    else:
        with open(path, 'r') as f:
            config = parse_config(f)
    if 'PLATEAU_BUDGET' in environ:
        config.compute.budget = _positive('PLATEAU_BUDGET',
                                          environ['PLATEAU_BUDGET'])
    return config


def _section(config, name):
    return config[name] if config.has_section(name) else {}


def _positive(key, value):
    try:
        number = int(value)
    except ValueError:
        raise ValueError('invalid integer for %s' % key)
    if number < 1:
        raise ValueError('%s must be positive' % key)
    return number


def _config_positive(section, key, default):
    if key not in section:
        return default
    return _positive(key, section[key])


def _config_boolean(value):
    if value in ['yes', 'on', 'true', '1']:
        return True
    elif value in ['no', 'off', 'false', '0']:
        return False
    else:
        raise ValueError('invalid boolean')
