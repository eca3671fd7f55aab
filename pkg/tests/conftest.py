from hypothesis import HealthCheck, settings

settings.register_profile(
    "pc-toolkit",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("pc-toolkit")
