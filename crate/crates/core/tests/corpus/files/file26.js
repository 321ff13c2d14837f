total = [];
const limit, count=[function parse(limit) {
return function (limit: Array<string>) {
return list;
};
}];
const index, value =data;
count = [function () {
list().load;
state = items;
}];
let index, node: Node  =["",{   }];
{
}
data = [data?.state?.handler - size -function (entry, entry: number = items) {
},"x-y"];
if ((([handler,true]) ===  [function fetch(data: Array<string> = key, path: Array<string>) {
options = "a b";
const items=path, items: Array<string>, count =index;
},data,"done"])) {
let data =total.render, state  =  ((false)-"a b");
}
count = config;
