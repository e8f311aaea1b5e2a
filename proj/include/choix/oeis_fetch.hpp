#pragma once
// oeis_fetch.hpp - optional HTTP retrieval of reference b-files. Kept out of
// oeis.hpp so only network-aware binaries pay for the HTTP client.

#include <choix/oeis.hpp>

#include <httplib.h>

#include <stdexcept>
#include <string>

namespace choix {

// GET oeis.org/<id>/b<digits>.txt; never called implicitly.
inline std::string fetch_reference_bfile(sequence_id id) {
    const std::string name = to_string(id);
    const std::string path = "/" + name + "/b" + name.substr(1) + ".txt";
#ifdef CPPHTTPLIB_OPENSSL_SUPPORT
    httplib::SSLClient cli("oeis.org", 443);
#else
    httplib::Client cli("oeis.org", 80);
#endif
    cli.set_follow_location(true);
    cli.set_connection_timeout(10);
    cli.set_read_timeout(30);
    auto res = cli.Get(path);
    if (!res)
        throw std::runtime_error("fetch: no connection to oeis.org");
    if (res->status != 200)
        throw std::runtime_error("fetch: HTTP " + std::to_string(res->status) + " for " + path);
    return res->body;
}

}  // namespace choix
