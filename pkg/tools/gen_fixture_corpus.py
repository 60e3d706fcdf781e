"""Generate the deterministic test fixture corpora.

Writes three files under tests/fixtures/:
  training_feed.json  96 labeled articles (8 per category), category-specific
                      vocabulary, for building fixture DF tables and the
                      fixture classifier
  golden_feed.json    25 unlabeled articles for the determinism golden run
  kpminer_docs.json   20 short documents (<= 60 words) for the statistical
                      extractor oracle

Run from the repository root: python tools/gen_fixture_corpus.py
"""

import json
import random
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
OUT = ROOT / "tests" / "fixtures"

TEMPLATES = {
    "RegionalPolitics": {
        "sentences": [
            "The governor signed the budget bill after weeks of negotiation with the assembly.",
            "Local council members debated the zoning reform in a heated session.",
            "The mayor of {city} promised new housing funds for the district.",
            "Regional lawmakers proposed a tax rebate for rural municipalities.",
            "A recall petition against the county commissioner gathered momentum.",
        ],
        "entities": ["Sacramento", "Austin", "Denver", "Atlanta", "Boston", "Portland",
                     "Madison", "Trenton"],
    },
    "Sports": {
        "sentences": [
            "The striker scored twice as the team clinched the championship trophy.",
            "Fans packed the stadium for the playoff final against {city}.",
            "The coach praised the midfield after a decisive victory in the league.",
            "A hamstring injury sidelined the goalkeeper for the tournament.",
            "The club signed a record transfer deal before the season opener.",
        ],
        "entities": ["Barcelona", "Liverpool", "Madrid", "Munich", "Turin", "Lyon",
                     "Porto", "Ajax"],
    },
    "Entertainment": {
        "sentences": [
            "The director premiered the film at the festival to warm applause.",
            "The singer announced a world tour with {city} as the opening venue.",
            "Critics praised the actress for her performance in the new drama.",
            "The streaming series renewed for a third season after strong ratings.",
            "The band released an album that topped the charts within a week.",
        ],
        "entities": ["Hollywood", "Cannes", "Venice", "Sundance", "Toronto", "Tribeca",
                     "Berlinale", "Telluride"],
    },
    "InternationalRelations": {
        "sentences": [
            "Diplomats from {country} met to negotiate the trade agreement.",
            "The foreign minister urged renewed dialogue over the border dispute.",
            "The summit produced a joint communique on sanctions relief.",
            "Ambassadors exchanged proposals on the ceasefire framework.",
            "The treaty ratification stalled amid disagreements over tariffs.",
        ],
        "entities": ["France", "Germany", "Japan", "Brazil", "India", "Canada",
                     "Norway", "Egypt"],
    },
    "Science": {
        "sentences": [
            "Researchers published findings on the gene therapy trial in the journal.",
            "The telescope captured images of a distant galaxy cluster.",
            "A laboratory experiment confirmed the superconducting effect at higher temperatures.",
            "The expedition collected ice cores to study ancient climate patterns.",
            "Scientists at {org} sequenced the genome of a rare species.",
        ],
        "entities": ["MIT", "Caltech", "CERN", "NASA", "Stanford", "Oxford",
                     "Cambridge", "Berkeley"],
    },
    "Business": {
        "sentences": [
            "The company reported quarterly earnings that beat analyst forecasts.",
            "Shares of {org} rallied after the merger announcement.",
            "The startup raised a funding round led by venture investors.",
            "Retail sales climbed as consumer confidence strengthened.",
            "The board approved a dividend increase and a buyback program.",
        ],
        "entities": ["Acme Corp.", "Globex Inc.", "Initech Ltd.", "Vandelay Industries",
                     "Stark Industries", "Wayne Enterprises", "Hooli Inc.", "Umbrella Corp."],
    },
    "WarAndConflicts": {
        "sentences": [
            "Artillery shelling intensified near the frontline villages overnight.",
            "The ceasefire collapsed as troops advanced toward {city}.",
            "Military convoys carried supplies to the besieged garrison.",
            "The insurgency claimed responsibility for the ambush on the patrol.",
            "Refugees fled the bombardment seeking shelter across the border.",
        ],
        "entities": ["Aleppo", "Mosul", "Kharkiv", "Sarajevo", "Grozny", "Kandahar",
                     "Mogadishu", "Tripoli"],
    },
    "LawAndOrder": {
        "sentences": [
            "The jury convicted the defendant on three counts of fraud.",
            "Prosecutors filed charges after the investigation into the scheme.",
            "The appeals court overturned the sentence citing procedural errors.",
            "Detectives arrested a suspect in the downtown robbery case.",
            "The judge in {city} denied bail for the accused smuggler.",
        ],
        "entities": ["Chicago", "Houston", "Phoenix", "Dallas", "Memphis", "Tucson",
                     "Oakland", "Cleveland"],
    },
    "Technology": {
        "sentences": [
            "The chipmaker unveiled a processor with faster neural inference.",
            "Engineers at {org} released an update patching the security flaw.",
            "The smartphone launch featured a foldable display and new camera.",
            "Developers adopted the framework for building encrypted messaging apps.",
            "The robotics firm demonstrated an autonomous warehouse system.",
        ],
        "entities": ["Google", "Microsoft", "Samsung", "Intel", "Nvidia", "Sony",
                     "Huawei", "Qualcomm"],
    },
    "US": {
        "sentences": [
            "The Senate passed the infrastructure package after a late vote.",
            "The White House outlined a plan for student loan relief.",
            "Federal agencies braced for the hurricane landfall in {state}.",
            "The census revealed population shifts toward the Sun Belt.",
            "Governors requested disaster aid following the wildfire season.",
        ],
        "entities": ["Florida", "Texas", "California", "Ohio", "Georgia", "Arizona",
                     "Michigan", "Virginia"],
    },
    "World": {
        "sentences": [
            "Flooding displaced thousands of residents across the river delta.",
            "The election commission in {country} certified the runoff results.",
            "A volcanic eruption disrupted flights across the region.",
            "The heatwave strained power grids in several provinces.",
            "Rescue crews searched the rubble after the earthquake struck.",
        ],
        "entities": ["Indonesia", "Nigeria", "Peru", "Bangladesh", "Kenya", "Vietnam",
                     "Chile", "Morocco"],
    },
    "Miscellaneous": {
        "sentences": [
            "The museum opened an exhibition of medieval manuscripts.",
            "A lottery winner donated the jackpot to the animal shelter.",
            "The chess prodigy won the invitational with an unbeaten streak.",
            "Archaeologists uncovered a mosaic beneath the old marketplace.",
            "The culinary fair in {city} drew record crowds for street food.",
        ],
        "entities": ["Prague", "Vienna", "Budapest", "Krakow", "Lisbon", "Dublin",
                     "Zagreb", "Riga"],
    },
}

KPMINER_DOCS = [
    {"title": "Harbor expansion approved",
     "body": "The port authority approved the harbor expansion. The harbor expansion will add cargo berths. Council members praised the cargo berths and the port authority."},
    {"title": "Glacier retreat accelerates",
     "body": "Scientists measured glacier retreat across the range. Glacier retreat accelerated last decade. The survey mapped glacier retreat with laser scanners."},
    {"title": "Wind farm output",
     "body": "The wind farm reached record output. Turbine blades at the wind farm survived the storm. Engineers inspected turbine blades yesterday."},
    {"title": "Transit strike ends",
     "body": "The transit strike ended after marathon talks. Commuters cheered as the transit strike ended. Union leaders accepted the wage deal. The wage deal includes pension reform."},
    {"title": "Honey harvest festival",
     "body": "Beekeepers celebrated the honey harvest. The honey harvest doubled this year. Visitors tasted honey at the festival stalls."},
    {"title": "Quantum sensor breakthrough",
     "body": "The laboratory demonstrated a quantum sensor. The quantum sensor detects faint magnetic fields. Magnetic fields reveal hidden mineral deposits."},
    {"title": "Vineyard frost damage",
     "body": "Late frost damaged the vineyard rows. Growers burned candles to protect vineyard rows. The frost damage cut the grape yield."},
    {"title": "Library renovation",
     "body": "The library renovation finished ahead of schedule. Readers praised the library renovation. The reading hall gained skylights and quiet desks."},
    {"title": "Coral nursery success",
     "body": "Divers planted coral fragments in the nursery. The coral fragments survived the summer heat. Marine biologists expanded the coral nursery."},
    {"title": "Bridge toll debate",
     "body": "The toll increase angered commuters. Officials defended the toll increase as bridge repairs loom. Bridge repairs start next spring."},
    {"title": "Falcon nesting webcam",
     "body": "A falcon pair nested on the cathedral tower. The webcam streams the falcon pair to classrooms. Students named the chicks after rivers."},
    {"title": "Night market reopens",
     "body": "The night market reopened along the canal. Vendors at the night market sold lantern crafts. Lantern crafts sold out before midnight."},
    {"title": "Soil sensor network",
     "body": "Farmers deployed a soil sensor network. The soil sensor network tracks moisture levels. Moisture levels guide the irrigation schedule."},
    {"title": "Opera house acoustics",
     "body": "Acousticians tuned the opera house ceiling. The opera house ceiling reflects sound evenly. Singers praised the warm acoustics."},
    {"title": "Cheese cave aging",
     "body": "The cooperative opened a cheese cave. Wheels age slowly inside the cheese cave. Humidity control keeps the rind supple."},
    {"title": "Marathon course change",
     "body": "Organizers rerouted the marathon course. The marathon course now climbs the old fort road. Runners welcomed the scenic route."},
    {"title": "Seed vault deposit",
     "body": "Botanists shipped seeds to the vault. The seed vault stores alpine flower varieties. Alpine flower varieties face habitat loss."},
    {"title": "Ferry schedule cuts",
     "body": "The ferry operator trimmed the winter schedule. Islanders protested the ferry schedule cuts. Officials promised a subsidy review."},
    {"title": "Street mural project",
     "body": "Artists painted a mural along the viaduct. The mural project hired local apprentices. Apprentices mixed pigments on site."},
    {"title": "Observatory open night",
     "body": "The observatory hosted an open night. Visitors queued at the observatory dome. Telescope volunteers pointed out the ringed planet."},
]


def _make_articles(rng: random.Random) -> tuple[list[dict], list[dict]]:
    training = []
    golden = []
    base_ts = 1514764800  # 2018-01-01T00:00:00Z
    for cat_idx, (category, spec) in enumerate(sorted(TEMPLATES.items())):
        sentences = spec["sentences"]
        entities = spec["entities"]
        for doc_idx in range(8):
            entity = entities[doc_idx]
            chosen = rng.sample(sentences, 3)
            body = " ".join(
                s.format(city=entity, country=entity, org=entity, state=entity)
                for s in chosen
            )
            ts = base_ts + 86400 * (cat_idx * 8 + doc_idx)
            lede = " ".join(body.split()[:5]).rstrip(".,")
            training.append({
                "source": {"name": f"fixture-{category.lower()}"},
                "title": f"{entity}: {lede}",
                "description": None,
                "url": f"https://fixture.test/{category}/{doc_idx + 1}",
                "publishedAt": f"2018-01-{(doc_idx % 27) + 1:02d}T0{cat_idx % 10}:00:00Z",
                "content": body,
                "category": category,
            })
    categories = sorted(TEMPLATES)
    for i in range(25):
        category = categories[i % len(categories)]
        spec = TEMPLATES[category]
        entity = spec["entities"][(i * 3) % len(spec["entities"])]
        chosen = rng.sample(spec["sentences"], 3)
        body = " ".join(
            s.format(city=entity, country=entity, org=entity, state=entity) for s in chosen
        )
        lede = " ".join(body.split()[:5]).rstrip(".,")
        golden.append({
            "source": {"name": "fixture-golden"},
            "title": f"{entity}: {lede}",
            "description": None,
            "url": f"https://fixture.test/golden/{i + 1}",
            "publishedAt": f"2018-02-{(i % 27) + 1:02d}T12:00:00Z",
            "content": body,
        })
    return training, golden


def main() -> None:
    rng = random.Random(42)
    training, golden = _make_articles(rng)
    OUT.mkdir(parents=True, exist_ok=True)
    (OUT / "training_feed.json").write_text(
        json.dumps({"status": "ok", "articles": training}, indent=1), encoding="utf-8"
    )
    (OUT / "golden_feed.json").write_text(
        json.dumps({"status": "ok", "articles": golden}, indent=1), encoding="utf-8"
    )
    (OUT / "kpminer_docs.json").write_text(
        json.dumps(KPMINER_DOCS, indent=1), encoding="utf-8"
    )
    longest = max(len((d["title"] + " " + d["body"]).split()) for d in KPMINER_DOCS)
    print(f"wrote {len(training)} training, {len(golden)} golden, "
          f"{len(KPMINER_DOCS)} kpminer docs (longest {longest} words)")


if __name__ == "__main__":
    main()
