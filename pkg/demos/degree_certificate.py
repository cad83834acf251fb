"""
Telling the two exchange families apart
=======================================

Exchanges never change the degrees of (n-2)-simplices that already
exist, and new ones through x have degree 6. So a degree that occurs in
one starting complex but never in the other separates their families.
"""

from math import comb

from plink.deltay import hdpet_certificate

print(" n   sigma degree   degrees in K(n)")
for n in range(2, 11):
    cert = hdpet_certificate(n)
    print("%2d   %6d         %-30s %s"
          % (n, comb(n + 5, 2), sorted(cert.k_degrees), "ok" if cert.holds else "FAIL"))
