from omlbox.config.configurator import Config
