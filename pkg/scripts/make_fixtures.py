"""Generate the four reference chart fixtures (bar, line, scatter, map).

Deterministic: fixed seed, output committed under src/chartnav/data/charts/.
Run from the repo root:  python scripts/make_fixtures.py
"""

from __future__ import annotations

import json
import math
import random
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "src" / "chartnav" / "data" / "charts"

rng = random.Random(20240817)


# -- choropleth map: vaccination rates by country -----------------------------

AFRICA = [
    "Algeria", "Angola", "Benin", "Botswana", "Burkina Faso", "Burundi",
    "Cameroon", "Central African Republic", "Chad", "Congo",
    "Democratic Republic of Congo", "Djibouti", "Egypt", "Equatorial Guinea",
    "Eritrea", "Eswatini", "Ethiopia", "Gabon", "Gambia", "Ghana", "Guinea",
    "Guinea-Bissau", "Ivory Coast", "Kenya", "Lesotho", "Liberia", "Libya",
    "Madagascar", "Malawi", "Mali", "Mauritania", "Mauritius", "Morocco",
    "Mozambique", "Namibia", "Niger", "Nigeria", "Rwanda", "Senegal",
    "Sierra Leone", "Somalia", "South Africa", "South Sudan", "Sudan",
    "Tanzania", "Togo", "Tunisia", "Uganda", "Zambia", "Zimbabwe",
]
ASIA = [
    "Afghanistan", "Armenia", "Azerbaijan", "Bahrain", "Bangladesh", "Bhutan",
    "Brunei", "Cambodia", "China", "Cyprus", "Georgia", "India", "Indonesia",
    "Iran", "Iraq", "Israel", "Japan", "Jordan", "Kazakhstan", "Kuwait",
    "Kyrgyzstan", "Laos", "Lebanon", "Malaysia", "Maldives", "Mongolia",
    "Myanmar", "Nepal", "North Korea", "Oman", "Pakistan", "Palestine",
    "Philippines", "Qatar", "Saudi Arabia", "Singapore", "South Korea",
    "Sri Lanka", "Syria", "Taiwan", "Tajikistan", "Thailand", "Timor-Leste",
    "Turkey", "Turkmenistan", "United Arab Emirates", "Uzbekistan", "Vietnam",
    "Yemen",
]
EUROPE = [
    "Albania", "Austria", "Belarus", "Belgium", "Bosnia and Herzegovina",
    "Bulgaria", "Croatia", "Czechia", "Denmark", "Estonia", "Finland",
    "France", "Germany", "Greece", "Hungary", "Iceland", "Ireland", "Italy",
    "Kosovo", "Latvia", "Lithuania", "Luxembourg", "Malta", "Moldova", "Montenegro",
    "Netherlands", "North Macedonia", "Norway", "Poland", "Portugal",
    "Romania", "Russia", "Serbia", "Slovakia", "Slovenia", "Spain", "Sweden",
    "Switzerland", "Ukraine", "United Kingdom",
]
NORTH_AMERICA = [
    "Bahamas", "Barbados", "Belize", "Canada", "Costa Rica", "Cuba", "Dominica",
    "Dominican Republic", "El Salvador", "Grenada", "Guatemala", "Haiti",
    "Honduras", "Jamaica", "Mexico", "Nicaragua", "Panama",
    "Saint Lucia", "Trinidad and Tobago", "United States",
]
SOUTH_AMERICA = [
    "Argentina", "Bolivia", "Brazil", "Chile", "Colombia", "Ecuador",
    "Guyana", "Paraguay", "Peru", "Suriname", "Uruguay", "Venezuela",
]
OCEANIA = [
    "Australia", "Fiji", "Guam", "New Zealand", "Papua New Guinea", "Samoa",
    "Solomon Islands", "Tonga", "Vanuatu",
]

CONTINENTS = {
    "Africa": AFRICA,
    "Asia": ASIA,
    "Europe": EUROPE,
    "North America": NORTH_AMERICA,
    "South America": SOUTH_AMERICA,
    "Oceania": OCEANIA,
}

PINNED_RATES = {
    "Burundi": 0.2,       # global minimum
    "Rwanda": 78.0,       # highest in Africa
    "South Africa": 36.0,
    "Haiti": 2.1,
    "Guam": 94.3,
    "Yemen": 2.6,
    "Chad": 5.2,
    "Algeria": 17.8,
    "Syria": 8.9,
    "Iraq": 18.4,
    "Congo": 11.7,
    "Palestine": 33.5,
    "United States": 67.4,
    "Canada": 82.6,
    "Mexico": 61.2,
}

RATE_RANGES = {
    "Africa": (1.0, 74.0),
    "Asia": (30.0, 98.0),
    "Europe": (48.0, 82.0),
    "North America": (40.0, 90.0),
    "South America": (58.0, 84.0),
    "Oceania": (30.0, 72.0),
}


def make_map():
    continent_of = {}
    for continent, countries in CONTINENTS.items():
        for c in countries:
            continent_of[c] = continent
    all_countries = [c for group in CONTINENTS.values() for c in group]
    assert len(all_countries) == len(set(all_countries)) == 180, len(all_countries)

    rates = {}
    for country in all_countries:
        if country in PINNED_RATES:
            rates[country] = PINNED_RATES[country]
        else:
            lo, hi = RATE_RANGES[continent_of[country]]
            rates[country] = round(rng.uniform(lo, hi), 1)

    # South America averages exactly 69.7, the highest continent mean.
    sa = [c for c in SOUTH_AMERICA]
    target_sum = round(69.7 * len(sa), 1)
    head = sa[:-1]
    rates.update({c: round(rng.uniform(60.0, 80.0), 1) for c in head})
    last = round(target_sum - sum(rates[c] for c in head), 1)
    assert 55.0 <= last <= 85.0, last
    rates[sa[-1]] = last

    def continent_mean(continent):
        members = CONTINENTS[continent]
        return sum(rates[c] for c in members) / len(members)

    sa_mean = continent_mean("South America")
    assert abs(sa_mean - 69.7) < 0.01, sa_mean
    for continent in CONTINENTS:
        if continent != "South America":
            assert continent_mean(continent) < sa_mean, (continent, continent_mean(continent))
    assert max(rates[c] for c in AFRICA) == 78.0
    assert min(rates.values()) == 0.2 and rates["Burundi"] == 0.2

    # "No apparent order": Guam first, Haiti third, rest shuffled.
    rest = [c for c in all_countries if c not in ("Guam", "Haiti")]
    rng.shuffle(rest)
    ordered = ["Guam", rest[0], "Haiti"] + rest[1:]
    assert len(ordered) == 180 and ordered[2] == "Haiti"

    rows = [
        {
            "Country": c,
            "Continent": continent_of[c],
            "Percent Fully Vaccinated": rates[c],
        }
        for c in ordered
    ]
    spec = {
        "description": "Share of the population fully vaccinated against COVID-19 by country.",
        "mark": "geoshape",
        "data": {"url": "map_data.json"},
        "encoding": {
            "color": {
                "field": "Percent Fully Vaccinated",
                "type": "quantitative",
                "scale": {"domain": [0, 100], "range": ["#eff6fc", "#08306b"]},
            },
            "detail": {"field": "Country", "type": "nominal"},
        },
    }
    return spec, rows


# -- bar chart: global temperature anomaly ------------------------------------

def make_bar():
    rows = []
    for year in range(1850, 2022):
        t = (year - 1850) / 171
        anomaly = -0.32 + 1.38 * t**1.6 + 0.18 * math.sin(year * 0.7) + rng.uniform(-0.06, 0.06)
        anomaly = round(anomaly, 2)
        if anomaly == 0.0:
            anomaly = 0.01
        rows.append(
            {
                "Year": str(year),
                "Temperature Anomaly": anomaly,
                "Temporal Polarity": "positive polarity" if anomaly > 0 else "negative polarity",
            }
        )
    assert len(rows) == 172
    spec = {
        "description": "Global temperature anomaly in degrees Celsius relative to the 1951-1980 average.",
        "mark": "bar",
        "data": {"url": "bar_data.json"},
        "encoding": {
            "x": {"field": "Year", "type": "temporal"},
            "y": {"field": "Temperature Anomaly", "type": "quantitative"},
            "color": {
                "field": "Temporal Polarity",
                "type": "nominal",
                "scale": {"domain": ["negative polarity", "positive polarity"]},
            },
        },
    }
    return spec, rows


# -- line chart: housing inventory ---------------------------------------------

def make_line():
    rows = []
    peak = 1548000.0
    for i in range(102):  # 2016-01 .. 2024-06
        year = 2016 + i // 12
        month = 1 + i % 12
        t = i / 101
        seasonal = 60000 * math.sin((month - 3) / 12 * 2 * math.pi)
        decline = peak - 1020000 * min(1.0, t / 0.72) ** 1.35
        recovery = 175000 * max(0.0, (t - 0.78)) / 0.22
        value = decline + seasonal * (1 - 0.5 * t) + recovery + rng.uniform(-15000, 15000)
        rows.append({"Date": f"{year:04d}-{month:02d}", "Inventory": int(round(value))})

    values = [r["Inventory"] for r in rows]
    i_max = values.index(max(values))
    i_min = values.index(min(values))
    rows[i_max]["Inventory"] = 1548000
    rows[i_min]["Inventory"] = 435000
    values = [r["Inventory"] for r in rows]
    assert 1400000 < max(values) <= 1600000, max(values)
    assert 400000 <= min(values) < 600000, min(values)

    spec = {
        "description": "Number of homes for sale in the United States over time.",
        "mark": "line",
        "data": {"url": "line_data.json"},
        "encoding": {
            "x": {"field": "Date", "type": "temporal"},
            "y": {
                "field": "Inventory",
                "type": "quantitative",
                "title": "Number of Homes for Sale",
            },
        },
    }
    return spec, rows


# -- scatter plot: GDP vs life expectancy --------------------------------------

SCATTER_COUNTRIES = [
    # (country, continent, gdp 1997, life 1997)
    ("Nigeria", "Africa", 1460, 47.5),
    ("Egypt", "Africa", 3800, 66.8),
    ("South Africa", "Africa", 7100, 57.9),
    ("Kenya", "Africa", 1360, 52.3),
    ("Ethiopia", "Africa", 530, 49.8),
    ("China", "Asia", 2290, 70.4),
    ("India", "Asia", 1460, 61.8),
    ("Japan", "Asia", 28820, 80.6),
    ("Indonesia", "Asia", 3120, 66.1),
    ("Vietnam", "Asia", 1390, 70.7),
    ("Saudi Arabia", "Asia", 20740, 70.9),
    ("South Korea", "Asia", 15960, 74.2),
    ("Germany", "Europe", 27780, 77.3),
    ("France", "Europe", 25890, 78.6),
    ("United Kingdom", "Europe", 26380, 77.2),
    ("Italy", "Europe", 24670, 78.8),
    ("Spain", "Europe", 20440, 78.7),
    ("Poland", "Europe", 9510, 72.7),
    ("Sweden", "Europe", 25270, 79.4),
    ("United States", "North America", 35770, 76.8),
    ("Canada", "North America", 28950, 78.6),
    ("Mexico", "North America", 9770, 73.7),
    ("Cuba", "North America", 5430, 76.2),
    ("Guatemala", "North America", 4100, 66.2),
    ("Brazil", "South America", 7960, 69.4),
    ("Argentina", "South America", 10790, 73.3),
    ("Chile", "South America", 10120, 75.8),
    ("Colombia", "South America", 6120, 70.3),
    ("Peru", "South America", 5840, 68.4),
    ("Australia", "Oceania", 26230, 78.8),
    ("New Zealand", "Oceania", 21050, 77.6),
    ("Fiji", "Oceania", 4030, 66.5),
]


def make_scatter():
    rows = []
    pop_base = {name: rng.randint(800, 140000) * 10000 for name, *_ in SCATTER_COUNTRIES}
    for country, continent, gdp0, life0 in SCATTER_COUNTRIES:
        for step, year in enumerate((1997, 2002, 2007)):
            growth = (1 + rng.uniform(0.01, 0.05)) ** (5 * step)
            gdp = int(round(gdp0 * growth))
            life = round(life0 + step * rng.uniform(0.4, 1.8), 1)
            pop = int(round(pop_base[country] * (1 + 0.013) ** (5 * step)))
            rows.append(
                {
                    "Country": country,
                    "Continent": continent,
                    "Year": year,
                    "GDP per Capita": gdp,
                    "Life Expectancy": life,
                    "Population": pop,
                }
            )
    assert len(rows) == 96
    spec = {
        "description": "GDP per capita against life expectancy by country, filterable by year.",
        "mark": "point",
        "data": {"url": "scatter_data.json"},
        "transform": [{"filter": "datum.Year == year"}],
        "params": [
            {
                "name": "year",
                "value": 2002,
                "bind": {"input": "range", "min": 1997, "max": 2007, "step": 5},
            }
        ],
        "encoding": {
            "x": {"field": "GDP per Capita", "type": "quantitative"},
            "y": {"field": "Life Expectancy", "type": "quantitative"},
            "color": {
                "field": "Continent",
                "type": "nominal",
                "scale": {
                    "domain": [
                        "Africa",
                        "Asia",
                        "Europe",
                        "North America",
                        "Oceania",
                        "South America",
                    ]
                },
            },
        },
    }
    return spec, rows


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name, maker in (
        ("map", make_map),
        ("bar", make_bar),
        ("line", make_line),
        ("scatter", make_scatter),
    ):
        spec, rows = maker()
        (OUT / f"{name}.json").write_text(json.dumps(spec, indent=2) + "\n", encoding="utf-8")
        (OUT / f"{name}_data.json").write_text(json.dumps(rows, indent=1) + "\n", encoding="utf-8")
        print(f"{name}: {len(rows)} rows")


if __name__ == "__main__":
    main()
