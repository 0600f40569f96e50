import os

from kernel.field import FieldConfig

PRIME_ENV_VAR = "FAT_ACI_PRIME"


def get_default_field_config(config) -> FieldConfig:
    prime = os.environ.get(PRIME_ENV_VAR) or config["field"]["prime"]
    return FieldConfig(p=int(prime), seed=int(config["field"]["seed"]))
