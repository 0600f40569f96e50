from scheme.params import BiDegree


def get_default_margin(config, section: str = "verification") -> BiDegree:
    a, b = config[section]["margin"]
    return BiDegree(int(a), int(b))
