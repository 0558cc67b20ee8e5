#pragma once

#include <string>

// Path of the lorentz-eig binary, passed to the test runner as --cli=...
extern std::string g_cli_path;
