from hypothesis import settings

import helpers

settings.register_profile("default", deadline=None)
settings.load_profile("default")


def pytest_terminal_summary(terminalreporter):
    if not helpers.ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(helpers.ACCEPTANCE):
        terminalreporter.write_line(line)
